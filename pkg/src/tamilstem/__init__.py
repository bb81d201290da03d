"""Tamil stemming toolkit: letter segmentation, declarative suffix
rules, two stemming engines, a paradigm generator, and an evaluation
harness."""

from .evaluation import (
    DatasetStats,
    EvalReport,
    EvalRow,
    GoldConflictWarning,
    GoldEntry,
    GoldError,
    accuracy,
    bundled_gold,
    compare,
    dataset_stats,
    evaluate,
    extra_gold,
    format_accuracy,
    load_gold,
    parse_report_csv,
    render,
)
from .graphemes import GraphemeWord, ends_with, is_tamil, normalize, segment, word
from .paradigm import (
    PARADIGMS,
    build_corpus,
    default_roots,
    generate_forms,
    load_roots,
)
from .rules import (
    ALL_CLASSES,
    RuleConflictError,
    RuleError,
    RuleSet,
    SuffixClass,
    SuffixRule,
    apply_rule,
    builtin_rules,
    candidates,
    parse_rules,
    render_rules,
    validate_rules,
)
from .stemmers import (
    ENGINES,
    StemResult,
    StemStep,
    adjectival_to_verb,
    light_stem,
    stem_batch,
    strip_plural,
    strip_stem,
    strip_tense,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CLASSES",
    "DatasetStats",
    "ENGINES",
    "EvalReport",
    "EvalRow",
    "GoldConflictWarning",
    "GoldEntry",
    "GoldError",
    "GraphemeWord",
    "PARADIGMS",
    "RuleConflictError",
    "RuleError",
    "RuleSet",
    "StemResult",
    "StemStep",
    "SuffixClass",
    "SuffixRule",
    "accuracy",
    "adjectival_to_verb",
    "apply_rule",
    "builtin_rules",
    "build_corpus",
    "bundled_gold",
    "candidates",
    "compare",
    "dataset_stats",
    "default_roots",
    "ends_with",
    "evaluate",
    "extra_gold",
    "format_accuracy",
    "generate_forms",
    "is_tamil",
    "light_stem",
    "load_gold",
    "load_roots",
    "normalize",
    "parse_report_csv",
    "parse_rules",
    "render",
    "render_rules",
    "segment",
    "stem_batch",
    "strip_plural",
    "strip_stem",
    "strip_tense",
    "validate_rules",
    "word",
    "__version__",
]
