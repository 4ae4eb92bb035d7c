"""Command-line front end: extract, eval and debug subcommands.

Exit codes: 0 success, 2 usage or input error, 1 internal error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .config import FrakeConfig
from .errors import InputError
from .evaluate import load_dataset, run_benchmark
from .pipeline import export_debug, extract


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lang", default="en", help="language tag (en, fr, pl)")
    parser.add_argument("-k", type=int, default=10, help="ranking cutoff")
    parser.add_argument("--min-support", type=int, default=2,
                        help="minimum sentence support for phrases")
    parser.add_argument("--max-phrase-len", type=int, default=4,
                        help="maximum phrase length in words")
    parser.add_argument("--matcher", choices=("exact", "stemmed"), default="stemmed",
                        help="gold-key match rule for evaluation")
    parser.add_argument("--stoplist", type=Path, default=None,
                        help="custom stoplist file (one word per line)")
    parser.add_argument("--lexicon", type=Path, default=None,
                        help="custom POS lexicon file (word<TAB>class)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for eval")
    parser.add_argument("--drop-numbers", action="store_true",
                        help="drop pure-number tokens")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frake",
        description="Keyword and key-phrase extraction fusing graph centrality "
                    "and textural word features.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser("extract", help="extract keywords from one document")
    p_extract.add_argument("input", nargs="?", default="-",
                           help="input file, or - for standard input")
    _add_common_options(p_extract)

    p_eval = sub.add_parser("eval", help="evaluate over a dataset of documents and keys")
    p_eval.add_argument("dataset", help="dataset directory or JSONL file")
    p_eval.add_argument("--extractor", choices=("frake", "tfidf"), default="frake")
    p_eval.add_argument("--name", default=None, help="dataset name for the report")
    _add_common_options(p_eval)

    p_debug = sub.add_parser("debug", help="export graph, centrality and feature tables")
    p_debug.add_argument("input", nargs="?", default="-",
                         help="input file, or - for standard input")
    p_debug.add_argument("--debug-export", type=Path, required=True,
                         help="output directory")
    _add_common_options(p_debug)

    return parser


def _config_from(args: argparse.Namespace) -> FrakeConfig:
    config = FrakeConfig(
        language=args.lang,
        k=args.k,
        min_support=args.min_support,
        max_phrase_len=args.max_phrase_len,
        matcher=args.matcher,
        stoplist_path=args.stoplist,
        lexicon_path=args.lexicon,
        debug_export=getattr(args, "debug_export", None),
        jobs=args.jobs,
        drop_numbers=args.drop_numbers,
    )
    config.validate()
    return config


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _cmd_extract(args: argparse.Namespace) -> int:
    config = _config_from(args)
    result = extract(_read_input(args.input), config)
    print(result.to_json())
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    config = _config_from(args)
    records = load_dataset(args.dataset, language=config.language)
    name = args.name or Path(args.dataset).stem or "dataset"
    report = run_benchmark(
        records, config, extractor=args.extractor, dataset_name=name, jobs=config.jobs
    )
    print(report.to_json())
    print()
    print(report.to_table())
    return 0


def _cmd_debug(args: argparse.Namespace) -> int:
    config = _config_from(args)
    try:
        paths = export_debug(_read_input(args.input), config, args.debug_export)
    except OSError as exc:
        raise InputError(f"cannot write debug export: {exc}") from exc
    for path in paths:
        print(path)
    return 0


_COMMANDS = {"extract": _cmd_extract, "eval": _cmd_eval, "debug": _cmd_debug}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (InputError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
