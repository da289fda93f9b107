"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.
"""
import argparse
import logging
import sys

from . import nb
from .corpus import corpus_stats, load_corpus
from .errors import DataError, EvaluationError
from .evaluate import EvalReport, grid_tune, kfold_cv
from .lexicon import Lang, load_lexicon_path
from .pipeline import PAIR_PRESETS, Params, Pipeline

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INTERNAL = 0, 1, 2, 3

log = logging.getLogger("cmsenti")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(minimum):
    def parse(text):
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}")
        return value
    return parse


def build_parser():
    parser = _Parser(prog="cmsenti", description="Sentiment polarity for language-tagged code-mixed tweets.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def model_opts(p):
        p.add_argument("--ngram-max", type=_positive_int(1), default=None, help="largest n-gram order (default 2)")
        p.add_argument("--min-count", type=_positive_int(1), default=None, help="frequency cutoff (default 2)")
        p.add_argument("--no-priors", action="store_true", help="score by likelihood only")
        p.add_argument("--pair", choices=sorted(PAIR_PRESETS), help="language-pair preset for ngram/min-count")

    def lexicon_opts(p):
        p.add_argument("--lexicon-en", metavar="PATH", help="English lexicon (TSV file or directory)")
        p.add_argument("--lexicon-bn", metavar="PATH", help="Bengali lexicon (TSV file or directory)")
        p.add_argument("--no-case-fold", action="store_true", help="match lexicon words case-sensitively")

    p = sub.add_parser("train", help="train a model on a labeled corpus")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--model", required=True, metavar="PATH")
    model_opts(p)
    lexicon_opts(p)

    p = sub.add_parser("predict", help="label tweets with a trained model")
    p.add_argument("--model", required=True, metavar="PATH")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--output", required=True, metavar="PATH")
    lexicon_opts(p)

    p = sub.add_parser("eval", help="score predictions against a labeled corpus")
    p.add_argument("--input", required=True, metavar="PATH", help="gold labeled corpus")
    p.add_argument("--predictions", required=True, metavar="PATH", help="id<TAB>label file")
    p.add_argument("--output", metavar="PATH", help="also write key=value report here")

    for name, helptext in (("cv", "k-fold cross-validation"), ("tune", "grid search by k-fold CV")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--input", required=True, metavar="PATH")
        p.add_argument("--folds", type=_positive_int(2), default=10)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", metavar="PATH", help="also write the report here")
        model_opts(p)
        lexicon_opts(p)

    p = sub.add_parser("stats", help="corpus statistics")
    p.add_argument("--input", required=True, metavar="PATH")
    return parser


def _params(args) -> Params:
    preset = PAIR_PRESETS.get(args.pair, {}) if args.pair else {}
    ngram_max = args.ngram_max if args.ngram_max is not None else preset.get("ngram_max", 2)
    min_count = args.min_count if args.min_count is not None else preset.get("min_count", 2)
    return Params(ngram_max, min_count, not args.no_priors)


def _lexicons(args):
    fold = not args.no_case_fold
    en = load_lexicon_path(args.lexicon_en, Lang.EN, case_fold=fold) if args.lexicon_en else None
    bn = load_lexicon_path(args.lexicon_bn, Lang.BN, case_fold=fold) if args.lexicon_bn else None
    return en, bn


def _read_corpus(path, labeled):
    try:
        return load_corpus(path, labeled)
    except DataError as exc:
        raise DataError(f"{path}: {exc}") from exc


def _emit(text, output=None):
    sys.stdout.write(text)
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_train(args):
    params = _params(args)
    en, bn = _lexicons(args)
    corpus = _read_corpus(args.input, True)
    print(corpus_stats(corpus).format())
    model = Pipeline(params, en, bn).fit(corpus)
    nb.save_model(model, args.model)
    print(f"vocabulary size m = {model.m}")
    print(f"model written to {args.model}")


def cmd_predict(args):
    model = nb.load_model(args.model)
    en, bn = _lexicons(args)
    pipe = Pipeline(Params(model.vocab.ngram_max, model.vocab.min_count, model.use_priors), en, bn)
    pipe.check_model(model)
    tweets = _read_corpus(args.input, None)
    labels = pipe.predict(model, tweets) if tweets else []
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        for tweet, label in zip(tweets, labels):
            fh.write(f"{tweet.id}\t{label}\n")
    print(f"{len(tweets)} prediction(s) written to {args.output}")


def read_predictions(path) -> dict:
    preds = {}
    with open(path, encoding="utf-8-sig") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise DataError(f"{path}: line {lineno}: expected 'id<TAB>label'")
            if parts[0] in preds:
                raise DataError(f"{path}: line {lineno}: duplicate id {parts[0]!r}")
            preds[parts[0]] = parts[1].strip()
    return preds


def cmd_eval(args):
    gold = _read_corpus(args.input, True)
    preds = read_predictions(args.predictions)
    missing = [t.id for t in gold if t.id not in preds]
    extra = sorted(set(preds) - {t.id for t in gold})
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing predictions for id(s): " + ", ".join(missing))
        if extra:
            parts.append("predictions for unknown id(s): " + ", ".join(extra))
        raise EvaluationError("; ".join(parts))
    report = EvalReport.from_labels([t.label for t in gold], [preds[t.id] for t in gold])
    sys.stdout.write(report.to_table() + "\n")
    _emit(report.to_kv(), args.output)


def cmd_cv(args):
    params = _params(args)
    en, bn = _lexicons(args)
    corpus = _read_corpus(args.input, True)
    result = kfold_cv(corpus, args.folds, args.seed, params, en_lexicon=en, bn_lexicon=bn)
    _emit(result.format(), args.output)


def cmd_tune(args):
    en, bn = _lexicons(args)
    corpus = _read_corpus(args.input, True)
    ngram_grid = (args.ngram_max,) if args.ngram_max is not None else (1, 2)
    min_count_grid = (args.min_count,) if args.min_count is not None else (1, 2, 3)
    result = grid_tune(corpus, ngram_grid, min_count_grid, args.folds, args.seed,
                       use_priors=not args.no_priors, en_lexicon=en, bn_lexicon=bn)
    _emit(result.format(), args.output)


def cmd_stats(args):
    print(corpus_stats(_read_corpus(args.input, None)).format())


COMMANDS = {"train": cmd_train, "predict": cmd_predict, "eval": cmd_eval,
            "cv": cmd_cv, "tune": cmd_tune, "stats": cmd_stats}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        COMMANDS[args.command](args)
    except (DataError, OSError) as exc:
        print(f"cmsenti: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Exception:  # noqa: BLE001
        log.exception("internal error")
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
