"""
JSON facet-list interchange format:

    {"name": "rp2_6", "vertices": 6, "facets": [[0, 1, 2], ...]}

"name" is optional. A complex built by join() also records its two
factors under "join_factors", in the same format, so later commands
can use the Kunneth path instead of working on the full join.
"""

import json
import os
import tempfile

from raag.complexes.constructions import join
from raag.complexes.simplicial_complex import VertexMap, from_facets
from raag.errors import MalformedInputError


def complex_to_dict(complex_, include_factors=True):
    obj = {}
    if complex_.name is not None:
        obj["name"] = complex_.name
    obj["vertices"] = complex_.vertex_count
    obj["facets"] = [list(facet) for facet in complex_.facets]
    if include_factors and complex_.join_factors is not None:
        obj["join_factors"] = [complex_to_dict(f) for f in complex_.join_factors]
    return obj


def complex_from_dict(obj):
    if not isinstance(obj, dict):
        raise MalformedInputError("A complex must be a JSON object.")
    try:
        vertex_count = obj["vertices"]
        facets = obj["facets"]
    except KeyError as err:
        raise MalformedInputError(f"Complex JSON is missing the key {err}.")
    if isinstance(vertex_count, bool) or not isinstance(vertex_count, int):
        raise MalformedInputError(
            f"'vertices' must be an integer, got {vertex_count!r}."
        )
    if vertex_count < 0:
        raise MalformedInputError(
            f"'vertices' must be nonnegative, got {vertex_count}."
        )
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise MalformedInputError("'facets' must be a list of vertex lists.")

    name = obj.get("name")
    factors = obj.get("join_factors")
    if factors is not None:
        if not isinstance(factors, list) or len(factors) != 2:
            raise MalformedInputError("'join_factors' must list exactly two complexes.")
        joined = join(complex_from_dict(factors[0]), complex_from_dict(factors[1]))
        stated = from_facets(facets, vertex_count=vertex_count)
        if stated != joined:
            raise MalformedInputError(
                "'join_factors' do not join to the complex given by 'facets'."
            )
        joined.name = name
        return joined

    return from_facets(facets, vertex_count=vertex_count, name=name)


def read_json(path):
    try:
        with open(path, "rt", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as err:
        raise MalformedInputError(f"{path} is not valid JSON: {err}")
    except UnicodeDecodeError as err:
        raise MalformedInputError(f"{path} is not UTF-8 text: {err}")
    except OSError as err:
        raise MalformedInputError(f"Can't read {path}: {err.strerror or err}")


def read_complex(path):
    return complex_from_dict(read_json(path))


def read_vertex_map(path, source_vertex_count=None):
    obj = read_json(path)
    if isinstance(obj, dict) and "map" in obj:
        obj = obj["map"]
    return VertexMap.from_json_obj(obj, source_vertex_count)


def write_text_atomic(path, text):
    """
    Write to a temporary file in the same directory, then rename over
    the destination, so readers never see a half-written file.
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".raag_", suffix=".tmp")
    try:
        with os.fdopen(fd, "wt") as f:
            f.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def dumps_complex(complex_):
    return json.dumps(complex_to_dict(complex_)) + "\n"


def write_complex(complex_, path):
    write_text_atomic(path, dumps_complex(complex_))
