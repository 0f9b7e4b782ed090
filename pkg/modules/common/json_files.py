"""
================================================================================
JSON FILE HELPERS
================================================================================

Reading and writing the JSON documents used across the project: settings,
presentation files and command reports.
================================================================================
"""

import json
import os


def read_json_file(filepath, default=None):
    """
    Read and return data from a JSON file.

    Args:
        filepath (str): Path to the JSON file
        default: value returned when the file is missing or not valid JSON

    Returns:
        list/dict: Parsed JSON data, or `default`
    """
    try:
        with open(filepath, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        return default
    except json.JSONDecodeError:
        return default


def load_json_document(filepath):
    """Like read_json_file, but missing or invalid files raise."""
    with open(filepath, 'r', encoding='utf-8') as f:
        return json.load(f)


def write_json_file(filepath, data):
    """Write data to a JSON file with proper formatting."""
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(filepath, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2)
        f.write('\n')


def dumps(data) -> str:
    return json.dumps(data, indent=2)
