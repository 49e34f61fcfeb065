import json
import logging
import os
from pathlib import Path

log = logging.getLogger('CONFIG')

DEFAULT_CONFIG = {
    'max_order': 1_000_000,
    'normalization': 'SNN',
    'mode': 'q1',
    'hecke_params': 'single',
    'log_level': 'WARNING',
    'search_bound': 2,
    'float_digits': 12,
}


def rf(f, digits=DEFAULT_CONFIG['float_digits']):
    return round(f, digits)


def load_config(config_file_path=Path('config.json')):
    """config.json merged over the defaults; AY_MAX_ORDER overrides max_order."""
    config = dict(DEFAULT_CONFIG)
    config_file_path = Path(config_file_path)
    if config_file_path.exists():
        try:
            config.update(json.loads(config_file_path.read_text(encoding='utf-8')))
        except json.JSONDecodeError as error:
            raise ValueError(f'can\'t read config file [{config_file_path}]: {error}') from error
    else:
        log.info(f'can\'t find config file [{config_file_path}], using defaults')

    unknown = sorted(set(config) - set(DEFAULT_CONFIG))
    if unknown:
        log.warning(f'unknown config keys: {", ".join(unknown)}')

    max_order = os.environ.get('AY_MAX_ORDER')
    if max_order:
        try:
            config['max_order'] = int(max_order)
        except ValueError:
            raise ValueError(f'AY_MAX_ORDER must be an integer, got "{max_order}"') from None
    if config['max_order'] < 1:
        raise ValueError('max_order must be positive')
    return config


def setup_logging(level='WARNING'):
    logging.basicConfig(level=getattr(logging, str(level).upper(), logging.WARNING),
                        format='[%(name)s] %(levelname)s: %(message)s')


def to_json(data):
    return json.dumps(data, indent=4, ensure_ascii=False, sort_keys=False, default=str)


def write_output(text, save_path=None):
    if save_path is None:
        print(text)
        return
    save_path = Path(save_path)
    if not save_path.is_absolute():
        save_path = Path.cwd() / save_path
    save_path.parent.mkdir(exist_ok=True, parents=True)
    save_path.write_text(text + '\n', encoding='utf-8')
    log.info(f'written [{save_path}]')
