from pathlib import Path

CONFIG_FORMAT_VERSION = 1
REPORT_FORMAT_VERSION = 1

IDENTITIES = 'identities'
THEOREMS = 'theorems'
STRUCTURE = 'structure'
SUITES = (IDENTITIES, THEOREMS, STRUCTURE)

COMMANDS = ('hilbert', 'roots', 'pbw', 'lie', 'present', 'check')
FORMATS = ('text', 'structured')

CONFIG_DIR = Path(__file__).parent / 'configs'
DATABASE_FILE = 'nichols_basis.db'

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_RESOURCE_ERROR = 3


def shipped_config(name: str) -> Path:
    """path of a config shipped with the package, e.g. 'example50'"""
    return CONFIG_DIR / f'{name}.json'


def shipped_config_names() -> list:
    return sorted(path.stem for path in CONFIG_DIR.glob('*.json'))
