"""
================================================================================
CLI MODULE - Settings and Logging Setup
================================================================================

Defaults come from data/settings.json, merged over the built-in values
below. A missing or unreadable settings file leaves the built-in values in
place. Command-line flags override both.
================================================================================
"""

import copy
import logging
import os
import sys

from modules.common.json_files import read_json_file

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
DATA_DIR = os.path.join(PROJECT_ROOT, 'data')
SETTINGS_FILE = os.path.join(DATA_DIR, 'settings.json')

DEFAULT_SETTINGS = {
    'reversing': {
        'budget': 10000,
    },
    'monoid': {
        'max_length': 5,
        'size_cap': 200000,
    },
    'cli': {
        'format': 'json',
        'workers': 1,
    },
    'logging': {
        'level': 'INFO',
        'format': '%(levelname)s %(name)s: %(message)s',
    },
}


def load_settings(filepath=None):
    """
    Load settings, section by section, over DEFAULT_SETTINGS.

    Args:
        filepath (str): settings file; data/settings.json when omitted

    Returns:
        dict: complete settings
    """
    settings = copy.deepcopy(DEFAULT_SETTINGS)
    stored = read_json_file(filepath or SETTINGS_FILE, default={})
    if not isinstance(stored, dict):
        return settings
    for section, values in stored.items():
        if isinstance(values, dict) and section in settings:
            settings[section].update(values)
        else:
            settings[section] = values
    return settings


def configure_logging(settings, level=None):
    """Log to stderr so stdout only carries the report."""
    level_name = (level or settings['logging']['level']).upper()
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level_name, logging.INFO),
        format=settings['logging']['format'],
        force=True,
    )
