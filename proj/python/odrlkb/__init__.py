"""Conflict detection for ODRL constraints over finite knowledge bases."""

import json as _json
import os as _os

from . import _core
from ._core import KnowledgeBase, OdrlError

__all__ = [
    "KnowledgeBase",
    "OdrlError",
    "aligned_check",
    "check",
    "check_policy",
    "denote",
    "encode",
    "interpret_result",
    "run_bench",
    "satisfies",
    "subsumes",
    "validate_alignment",
    "validate_kb_file",
]


def _text(value):
    # dict/list, JSON text, or a path to a JSON file
    if isinstance(value, (dict, list)):
        return _json.dumps(value)
    if isinstance(value, _os.PathLike):
        value = _os.fspath(value)
    if isinstance(value, str) and not value.lstrip().startswith(("{", "[")):
        with open(value, encoding="utf-8") as fh:
            return fh.read()
    return value


def _kb(kb):
    if isinstance(kb, KnowledgeBase):
        return kb
    if isinstance(kb, dict):
        return KnowledgeBase.from_json(_json.dumps(kb))
    return KnowledgeBase.from_file(_os.fspath(kb))


def validate_kb_file(path):
    return _core.validate_kb_file(_os.fspath(path))


def denote(kb, constraint):
    """Closed denotation as a list of concept names; None when indeterminate."""
    return _core.denote(_kb(kb), _text(constraint))


def check(kb, left, right, mode="open"):
    """Returns (verdict, witness) for two same-operand constraints."""
    return _core.check(_kb(kb), _text(left), _text(right), mode)


def subsumes(kb, narrow, wide, mode="open"):
    return _core.subsumes(_kb(kb), _text(narrow), _text(wide), mode)


def check_policy(kbdir, left, right, mode="open"):
    """Composite check against a KB directory; returns the parsed result report."""
    return _json.loads(_core.check_policy(_os.fspath(kbdir), _text(left), _text(right), mode))


def satisfies(kbdir, context, constraint, mode="open"):
    return _core.satisfies(_os.fspath(kbdir), _text(context), _text(constraint), mode)


def validate_alignment(alignment, source, target):
    return _core.validate_alignment(_text(alignment), _kb(source), _kb(target))


def aligned_check(alignment, source, target, left, right, mode="open"):
    """Returns ((source verdict, witness), (aligned verdict, witness))."""
    return _core.aligned_check(_text(alignment), _kb(source), _kb(target), _text(left), _text(right), mode)


def encode(kb, left, right, polarity="compat", id="p", allow_indeterminate=False):
    return _core.encode(_kb(kb), _text(left), _text(right), polarity, id, allow_indeterminate)


def interpret_result(token, polarity):
    return _core.interpret_result(token, polarity)


def run_bench(mode="open", emit=False, suite_dir=None):
    """Runs the benchmark suite and returns the parsed report."""
    suite = None if suite_dir is None else _os.fspath(suite_dir)
    return _json.loads(_core.run_bench(mode, emit, suite))
