from abc import ABC, abstractmethod
import logging
from typing import Type
import nichols_tools.runner.database_interface as dbi
from nichols_tools.exceptions import CacheChecksumError
from nichols_tools.nichols.basis import NicholsBasis, build_basis
from nichols_tools.runner.config import JobConfig

logger = logging.getLogger(__name__)


class BasisRetriever(ABC):
    "obtains the NicholsBasis of a job config's braided space through its cutoff"

    @abstractmethod
    def fetch_basis(self, config: JobConfig):
        """returns a NicholsBasis, or None when this retriever has none"""


class KernelBasisRetriever(BasisRetriever):
    """computes the basis with the skew-derivation kernel"""

    def fetch_basis(self, config: JobConfig) -> NicholsBasis:
        logger.info('computing B(V) for %s through degree %d', config.name or 'config', config.cutoff)
        return build_basis(config.space(), config.cutoff,
                           crosscheck_degree=config.crosscheck_degree,
                           max_block_words=config.max_block_words)


class DatabaseBasisRetriever(BasisRetriever):
    """reads snapshots from a BasisDatabaseInterface; corrupt entries are evicted"""

    def __init__(self, database: Type[dbi.BasisDatabaseInterface]):
        self.database = database

    def fetch_basis(self, config: JobConfig):
        key = config.cache_key()
        try:
            snapshot = self.database.get_snapshot(key)
        except CacheChecksumError as error:
            logger.warning('%s; evicting and recomputing', error)
            self.database.evict(key)
            return None
        if snapshot is None:
            logger.info('cache miss for %s', key[:12])
            return None
        try:
            basis = NicholsBasis.from_snapshot(snapshot, config.space())
        except (KeyError, ValueError) as error:
            logger.warning('unreadable snapshot %s (%s); evicting', key[:12], error)
            self.database.evict(key)
            return None
        if basis.crosscheck_limit < min(config.crosscheck_degree, basis.cutoff):
            logger.info('cached basis %s was crosschecked through degree %d only', key[:12],
                        basis.crosschecked_through)
            basis.crosscheck(config.crosscheck_degree)
        logger.info('cache hit for %s', key[:12])
        return basis
