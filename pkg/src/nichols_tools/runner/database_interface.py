from abc import ABC, abstractmethod
import hashlib
import json
import logging
import sqlite3
from pathlib import Path
import pandas as pd
import nichols_tools.runner.constants as constants
from nichols_tools.exceptions import CacheChecksumError

logger = logging.getLogger(__name__)

TABLE_NAME = 'basis_snapshots'


def snapshot_payload(snapshot: dict) -> str:
    return json.dumps(snapshot, sort_keys=True, separators=(',', ':'))


def checksum(payload: str) -> str:
    return hashlib.sha256(payload.encode()).hexdigest()


class BasisDatabaseInterface(ABC):
    @abstractmethod
    def store_snapshot(self, key: str, snapshot: dict) -> None:
        """stores a NicholsBasis snapshot under key, replacing any older entry"""

    @abstractmethod
    def get_snapshot(self, key: str):
        """returns the snapshot stored under key or None; raises CacheChecksumError on a corrupt entry"""

    @abstractmethod
    def evict(self, key: str) -> None:
        """removes the entry stored under key"""


class SQLite3BasisDatabase(BasisDatabaseInterface):

    def __init__(self, cache_dir):
        self.cache_dir = Path(cache_dir)
        self.database_file = self.cache_dir / constants.DATABASE_FILE

    def store_snapshot(self, key: str, snapshot: dict):
        payload = snapshot_payload(snapshot)
        connection = self._connect()
        try:
            with connection:
                connection.execute(f'INSERT OR REPLACE INTO {TABLE_NAME} (key, payload, checksum) VALUES (?, ?, ?)',
                                   (key, payload, checksum(payload)))
        finally:
            connection.close()
        logger.info('stored basis snapshot %s', key[:12])

    def get_snapshot(self, key: str):
        connection = self._connect()
        try:
            result = pd.read_sql_query(f'SELECT payload, checksum FROM {TABLE_NAME} WHERE key = ?',
                                       connection, params=(key,))
        finally:
            connection.close()
        if result.empty:
            return None
        payload, stored = result.iloc[0]['payload'], result.iloc[0]['checksum']
        if checksum(payload) != stored:
            raise CacheChecksumError(f'snapshot {key[:12]} does not match its checksum')
        return json.loads(payload)

    def evict(self, key: str):
        connection = self._connect()
        try:
            with connection:
                connection.execute(f'DELETE FROM {TABLE_NAME} WHERE key = ?', (key,))
        finally:
            connection.close()
        logger.info('evicted basis snapshot %s', key[:12])

    def _connect(self) -> sqlite3.Connection:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        connection = sqlite3.connect(self.get_database_file())
        connection.execute(f""" CREATE TABLE IF NOT EXISTS {TABLE_NAME} (
                                    key text PRIMARY KEY,
                                    payload text NOT NULL,
                                    checksum text NOT NULL
                                ); """)
        return connection

    def _execute_query(self, query: str, params=()):
        """execute and return data from a query. Meant for troubleshooting and tests"""
        connection = self._connect()
        try:
            with connection:
                data = connection.execute(query, params).fetchall()
        finally:
            connection.close()
        return data

    def get_database_file(self):
        return str(self.database_file)
