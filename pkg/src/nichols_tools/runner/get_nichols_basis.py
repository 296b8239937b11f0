# -*- coding: utf-8 -*-
"""Retrieves NicholsBasis objects from a local sqlite cache or computes and stores them"""
import logging
from typing import Type
import nichols_tools.runner.database_interface as dbi
import nichols_tools.runner.retrievers as retrievers
from nichols_tools.nichols.basis import NicholsBasis
from nichols_tools.runner.config import JobConfig

logger = logging.getLogger(__name__)


class BasisPuller:

    def __init__(self, stored_retriever: Type[retrievers.BasisRetriever] = None,
                 kernel_retriever: Type[retrievers.BasisRetriever] = None,
                 database: Type[dbi.BasisDatabaseInterface] = None):
        self.stored_retriever = stored_retriever
        self.kernel_retriever = kernel_retriever or retrievers.KernelBasisRetriever()
        self.database = database

    @classmethod
    def sqlite_puller(cls, cache_dir):
        sqlite_db = dbi.SQLite3BasisDatabase(cache_dir)
        return cls(stored_retriever=retrievers.DatabaseBasisRetriever(sqlite_db),
                   kernel_retriever=retrievers.KernelBasisRetriever(),
                   database=sqlite_db)

    @classmethod
    def for_config(cls, config: JobConfig):
        """cached puller when the config names a cache_dir, computing puller otherwise"""
        if config.cache_dir:
            return cls.sqlite_puller(config.cache_dir)
        return cls()

    def fetch_basis(self, config: JobConfig) -> NicholsBasis:
        """grabs the basis from the stored database if possible and computes it otherwise"""
        basis = None
        if self.stored_retriever:
            basis = self.stored_retriever.fetch_basis(config)
        if basis is None:
            basis = self.kernel_retriever.fetch_basis(config)
            self.store_basis(config, basis)
        return basis

    def store_basis(self, config: JobConfig, basis: NicholsBasis):
        if self.database:
            self.database.store_snapshot(config.cache_key(), basis.snapshot())
