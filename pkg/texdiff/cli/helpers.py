import sys
from enum import Enum
from typing import Any, Callable, List, Optional, Sequence, Type, Union

import click

from texdiff.errors import (
    AlignmentError,
    ConfigurationError,
    DecodeError,
    FormatError,
    IngestionError,
    NumericalError,
    ParameterError,
    ShapeError,
    StratificationError,
)

USAGE_EXIT_CODE = 1
IO_EXIT_CODE = 2
NUMERICAL_EXIT_CODE = 3


class IOFailure(click.ClickException):
    exit_code = IO_EXIT_CODE


class NumericalFailure(click.ClickException):
    exit_code = NUMERICAL_EXIT_CODE


class InvalidSetup(click.ClickException):
    exit_code = USAGE_EXIT_CODE


IO_ERRORS = (OSError, DecodeError, FormatError, IngestionError)
SETUP_ERRORS = (
    AlignmentError,
    ConfigurationError,
    ParameterError,
    ShapeError,
    StratificationError,
)


class ExitCodeGroup(click.Group):
    """Maps texdiff errors to exit codes : 1 for usage errors, 2 for I/O
    errors and 3 when non-finite values show up"""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except IO_ERRORS as e:
            raise IOFailure(str(e)) from e
        except NumericalError as e:
            raise NumericalFailure(str(e)) from e
        except SETUP_ERRORS as e:
            raise InvalidSetup(str(e)) from e

    def main(  # type: ignore[override]
        self,
        args: Optional[Sequence[str]] = None,
        prog_name: Optional[str] = None,
        complete_var: Optional[str] = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        if not standalone_mode:
            return super().main(
                args, prog_name, complete_var, standalone_mode=False, **extra
            )

        try:
            rv = super().main(
                args, prog_name, complete_var, standalone_mode=False, **extra
            )
        except click.UsageError as e:
            e.show()
            sys.exit(USAGE_EXIT_CODE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(USAGE_EXIT_CODE)

        sys.exit(rv if isinstance(rv, int) else 0)


class CommaSeparatedChoice(click.ParamType):
    """A comma separated list of values of an Enum, like "pm,fbr".
    Duplicates are dropped, order is kept"""

    name = "list"

    def __init__(self, enum: Type[Enum]):
        self.enum = enum

    def get_metavar(self, param: click.Parameter) -> str:
        return ",".join(e.value for e in self.enum)

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> List[Enum]:
        if isinstance(value, str):
            raw_items = [v.strip() for v in value.split(",") if v.strip()]
        else:
            raw_items = list(value)

        items: List[Enum] = []
        for raw in raw_items:
            try:
                item = self.enum(raw)
            except ValueError:
                choices = ", ".join(e.value for e in self.enum)
                self.fail(f"{raw!r} is not one of {choices}", param, ctx)
            if item not in items:
                items.append(item)

        if not items:
            self.fail("Expected at least one value", param, ctx)

        return items


def diffusion_option(*args: Any, **kwargs: Any) -> Callable:
    return click.option(
        *args, callback=add_to_dict("diffusion_options"), expose_value=False, **kwargs
    )


def descriptor_option(*args: Any, **kwargs: Any) -> Callable:
    return click.option(
        *args, callback=add_to_dict("descriptor_options"), expose_value=False, **kwargs
    )


def add_to_dict(
    key: str,
) -> Callable[[click.Context, Union[click.Option, click.Parameter], Any], None]:
    def add_to_key(
        ctx: click.Context, param: Union[click.Option, click.Parameter], value: Any
    ) -> None:
        # Leave out values nobody asked for so the defaults of the
        # dataclasses apply, config file values count as asked for
        assert param.name is not None
        if not parameter_is_a_click_default(ctx, param.name):
            ctx.params.setdefault(key, {})[param.name] = value

    return add_to_key


def parameter_is_a_click_default(
    ctx: click.Context,
    name: str,
) -> bool:
    return ctx.get_parameter_source(name) == click.core.ParameterSource.DEFAULT


def diffusion_options(function: Callable) -> Callable:
    """All the DiffusionParams fields as command line options"""
    options = [
        diffusion_option("--kappa", type=float, help="Edge threshold κ"),
        diffusion_option(
            "--delta", type=float, help="Weight of the forward-backward term δ"
        ),
        diffusion_option("--p", "p", type=float, help="Growth exponent p (> 1)"),
        diffusion_option(
            "--epsilon", type=float, help="Fractional order ε of the NL method"
        ),
        diffusion_option("--dt", type=float, help="Time step, at most 0.25"),
        diffusion_option(
            "--sigma-step",
            "sigma_step",
            type=float,
            help="Gaussian σ added at each scale",
        ),
        diffusion_option(
            "--grad-floor",
            "grad_floor",
            type=float,
            help="Lower clamp of |∇I| in the forward-backward term",
        ),
        diffusion_option(
            "--edge-stopping",
            "edge_stopping",
            type=click.Choice(["rational", "exponential"]),
            help="Edge-stopping function g",
        ),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def descriptor_options(function: Callable) -> Callable:
    """All the DescriptorOptions fields as command line options"""
    options = [
        descriptor_option(
            "--ltp-k",
            "ltp_k",
            type=click.IntRange(min=0),
            help="LTP dead zone, in gray levels",
        ),
        descriptor_option(
            "--cslbp-t",
            "cslbp_t",
            type=click.FloatRange(min=0),
            help="CSLBP threshold on the range-normalized image",
        ),
        descriptor_option(
            "--cslbp-median/--no-cslbp-median",
            "cslbp_median",
            default=False,
            help="Apply a 3x3 median filter before CSLBP",
        ),
    ]
    for option in reversed(options):
        function = option(function)
    return function
