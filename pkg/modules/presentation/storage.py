"""
================================================================================
PRESENTATION MODULE - Presentation Files
================================================================================

JSON schema:
    {"generators": ["a", "b", ...],
     "relations": [[["a", "b"], ["b", "a"]], ...]}

Words are arrays of generator names. Files written from an arrangement also
carry "certified", "points" and "provenance"; the reader ignores them.
================================================================================
"""

from modules.common.json_files import load_json_document, write_json_file
from modules.presentation.relations import Presentation, PresentationError


def presentation_to_json(p: Presentation) -> dict:
    data = {
        'generators': list(p.names),
        'relations': [[[p.generators[x].name for x in left],
                       [p.generators[x].name for x in right]]
                      for left, right in p.relations],
    }
    if p.families:
        data['certified'] = p.certified
        data['points'] = [{
            'location': [str(f.point.location[0]), str(f.point.location[1])],
            'lines': list(f.point.lines),
            'base_word': [p.generators[x].name for x in f.base_word],
        } for f in p.families]
        data['provenance'] = list(p.provenance)
    return data


def presentation_from_json(data) -> Presentation:
    """Build a presentation from parsed JSON; raises PresentationError on bad shape."""
    if not isinstance(data, dict):
        raise PresentationError("presentation file must hold a JSON object")
    names = data.get('generators')
    relations = data.get('relations', [])
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise PresentationError("'generators' must be a list of names")
    if len(set(names)) != len(names):
        raise PresentationError("generator names must be distinct")
    if not isinstance(relations, list):
        raise PresentationError("'relations' must be a list of word pairs")

    index = {name: i for i, name in enumerate(names)}
    pairs = []
    for position, relation in enumerate(relations):
        if not isinstance(relation, list) or len(relation) != 2:
            raise PresentationError(f"relation {position} is not a pair of words")
        words = []
        for word in relation:
            if not isinstance(word, list):
                raise PresentationError(f"relation {position}: words are arrays of names")
            try:
                words.append(tuple(index[name] for name in word))
            except (KeyError, TypeError):
                raise PresentationError(f"relation {position} uses an unknown generator")
        pairs.append(tuple(words))

    return Presentation.from_names(names, pairs)


def read_presentation(filepath: str) -> Presentation:
    try:
        data = load_json_document(filepath)
    except ValueError as e:
        raise PresentationError(f"{filepath}: invalid JSON ({e})")
    return presentation_from_json(data)


def write_presentation(filepath: str, p: Presentation) -> None:
    write_json_file(filepath, presentation_to_json(p))
