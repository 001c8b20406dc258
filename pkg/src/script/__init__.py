"""Script language: parser, interpreter, report rendering and the regression corpus."""

from .corpus import CorpusEntry, CorpusOutcome, load_manifest, run_corpus, run_script_file
from .interpreter import ScriptInterpreter, get_interpreter
from .parser import Script, format_script, format_statement, parse, tokenize
from .render import render_report, render_to_text

__all__ = [
    "CorpusEntry",
    "CorpusOutcome",
    "load_manifest",
    "run_corpus",
    "run_script_file",
    "ScriptInterpreter",
    "get_interpreter",
    "Script",
    "format_script",
    "format_statement",
    "parse",
    "tokenize",
    "render_report",
    "render_to_text",
]
