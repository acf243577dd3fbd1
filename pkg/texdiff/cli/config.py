"""Experiment configuration files.

A configuration file is a flat list of key = value lines, # starts a comment :

    # brodatz.cfg
    dataset_root = datasets/brodatz
    methods = pm, fbr
    n_scales = 30

Values from the file become the defaults of the command line options, so
flags given on the command line win"""

import warnings
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from marshmallow import EXCLUDE, Schema, ValidationError, pre_load
from marshmallow.validate import OneOf, Range
from marshmallow_dataclass import NewType, class_schema
from parsimonious import Grammar, NodeVisitor, ParseError
from parsimonious.nodes import Node

from texdiff.classify import Classifier
from texdiff.descriptors import DEFAULT_OPTIONS, Descriptor, DescriptorOptions
from texdiff.diffusion import DEFAULT_PARAMS, DiffusionParams, EdgeStopping, Method
from texdiff.errors import ConfigurationError

config_line_grammar = Grammar(
    r"""
    line    = ws entry? ws comment?
    entry   = key ws "=" ws value
    key     = ~r"[A-Za-z_][A-Za-z0-9_-]*"
    value   = ~r"[^#\r\n]*"
    comment = ~r"#.*"
    ws      = ~r"[ \t]*"
    """
)


class ConfigLineVisitor(NodeVisitor):

    """Returns a (key, value) tuple, or None for blank and comment lines"""

    unwrapped_exceptions = (ValueError,)

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self.key: Optional[str] = None
        self.value: Optional[str] = None

    def visit_line(
        self, node: Node, visited_children: List[Node]
    ) -> Optional[Tuple[str, str]]:
        if self.key is None:
            return None
        if not self.value:
            raise ValueError(f"No value given for {self.key!r}")
        return self.key, self.value

    def visit_key(self, node: Node, visited_children: List[Node]) -> None:
        self.key = node.text.replace("-", "_")

    def visit_value(self, node: Node, visited_children: List[Node]) -> None:
        self.value = node.text.strip()

    def generic_visit(self, node: Node, visited_children: List[Node]) -> None:
        ...


def parse_config_line(line: str) -> Optional[Tuple[str, str]]:
    result: Optional[Tuple[str, str]] = ConfigLineVisitor().visit(
        config_line_grammar.parse(line)
    )
    return result


def parse_config(text: str) -> Dict[str, str]:
    raw: Dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        try:
            entry = parse_config_line(line)
        except (ParseError, ValueError) as e:
            raise ConfigurationError(
                f"Invalid configuration line {number} : {line!r}"
            ) from e
        if entry is None:
            continue
        key, value = entry
        if key in raw:
            warnings.warn(f"{key} is set more than once, the last value wins")
        raw[key] = value

    return raw


MethodName = NewType("MethodName", str, validate=OneOf([m.value for m in Method]))
DescriptorName = NewType(
    "DescriptorName", str, validate=OneOf([d.value for d in Descriptor])
)
ClassifierName = NewType(
    "ClassifierName", str, validate=OneOf([c.value for c in Classifier])
)
EdgeStoppingName = NewType(
    "EdgeStoppingName", str, validate=OneOf([e.value for e in EdgeStopping])
)
PositiveInt = NewType("PositiveInt", int, validate=Range(min=1))
FoldCount = NewType("FoldCount", int, validate=Range(min=2))
NonNegativeInt = NewType("NonNegativeInt", int, validate=Range(min=0))
NonNegativeFloat = NewType("NonNegativeFloat", float, validate=Range(min=0))

LIST_KEYS = ("methods", "descriptors", "classifiers")


@dataclass
class ExperimentConfig:
    dataset_root: Optional[str] = None
    methods: List[MethodName] = field(
        default_factory=lambda: [MethodName(m.value) for m in Method]
    )
    descriptors: List[DescriptorName] = field(
        default_factory=lambda: [DescriptorName(d.value) for d in Descriptor]
    )
    classifiers: List[ClassifierName] = field(
        default_factory=lambda: [ClassifierName(c.value) for c in Classifier]
    )
    n_scales: PositiveInt = PositiveInt(150)
    folds: FoldCount = FoldCount(10)
    seed: int = 0
    kappa: float = DEFAULT_PARAMS.kappa
    delta: float = DEFAULT_PARAMS.delta
    p: float = DEFAULT_PARAMS.p
    epsilon: float = DEFAULT_PARAMS.epsilon
    dt: float = DEFAULT_PARAMS.dt
    sigma_step: float = DEFAULT_PARAMS.sigma_step
    grad_floor: float = DEFAULT_PARAMS.grad_floor
    edge_stopping: EdgeStoppingName = EdgeStoppingName(
        DEFAULT_PARAMS.edge_stopping.value
    )
    ltp_k: NonNegativeInt = NonNegativeInt(DEFAULT_OPTIONS.ltp_k)
    cslbp_t: NonNegativeFloat = NonNegativeFloat(DEFAULT_OPTIONS.cslbp_t)
    cslbp_median: bool = False
    cache_dir: str = ".texdiff-cache"
    jobs: PositiveInt = PositiveInt(1)

    def diffusion_params(self) -> DiffusionParams:
        return DiffusionParams(
            kappa=self.kappa,
            delta=self.delta,
            p=self.p,
            epsilon=self.epsilon,
            dt=self.dt,
            sigma_step=self.sigma_step,
            grad_floor=self.grad_floor,
            edge_stopping=EdgeStopping(self.edge_stopping),
        )

    def descriptor_options(self) -> DescriptorOptions:
        return DescriptorOptions(
            ltp_k=self.ltp_k, cslbp_t=self.cslbp_t, cslbp_median=self.cslbp_median
        )

    def dump(self) -> Dict[str, Any]:
        dumped: Dict[str, Any] = CONFIG_SCHEMA.dump(self)
        return dumped


class BaseSchema(Schema):
    class Meta:
        ordered = True
        unknown = EXCLUDE

    @pre_load
    def split_lists(self, data: Dict[str, Any], **kwargs: Any) -> Dict[str, Any]:
        return {
            key: [v.strip() for v in value.split(",") if v.strip()]
            if key in LIST_KEYS and isinstance(value, str)
            else value
            for key, value in data.items()
        }


CONFIG_SCHEMA = class_schema(ExperimentConfig, base_schema=BaseSchema)()

CONFIG_KEYS = tuple(f.name for f in fields(ExperimentConfig))


def load_config(raw: Dict[str, Any]) -> ExperimentConfig:
    for key in raw:
        if key not in CONFIG_KEYS:
            warnings.warn(f"Unknown configuration key ignored : {key}")
    try:
        config: ExperimentConfig = CONFIG_SCHEMA.load(raw)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid configuration : {e.messages}") from e
    try:
        config.diffusion_params()
    except ValueError as e:
        raise ConfigurationError(f"Invalid configuration : {e}") from e
    return config


def load_config_file(path: Path) -> Tuple[ExperimentConfig, Dict[str, Any]]:
    """The validated configuration along with the values explicitly set in
    the file"""
    text = path.read_text(encoding="utf-8")
    raw = parse_config(text)
    config = load_config(raw)
    given = {k: v for k, v in asdict(config).items() if k in raw}
    return config, given
