"""Command Line Interface"""

from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import click
import simplejson as json

from texdiff.classify import Classifier, SweepResult, sweep_tables
from texdiff.descriptors import Descriptor, DescriptorOptions
from texdiff.diffusion import DiffusionParams, Method, diffuse as diffuse_image
from texdiff.diffusion import dump_stack
from texdiff.formats import load_dataset, load_image
from texdiff.formats.dump_tools import DEFAULT_FRAME_TEMPLATE
from texdiff.image import Dataset
from texdiff.utils import write_atomically
from texdiff.version import __version__

from .cache import FeatureCache
from .config import (
    ClassifierName,
    DescriptorName,
    EdgeStoppingName,
    ExperimentConfig,
    FoldCount,
    MethodName,
    NonNegativeFloat,
    NonNegativeInt,
    PositiveInt,
    load_config_file,
)
from .helpers import (
    CommaSeparatedChoice,
    ExitCodeGroup,
    descriptor_options,
    diffusion_options,
)
from .pipeline import FeatureStore
from .reports import (
    features_csv,
    format_gain_report,
    gain_report,
    read_results,
    results_frame,
    summary_frame,
    to_csv_bytes,
)

DEFAULTS = ExperimentConfig()
SUBCOMMANDS = ("diffuse", "extract", "sweep", "info")


def use_config_file(
    ctx: click.Context, param: click.Parameter, value: Optional[Path]
) -> None:
    if value is None:
        return
    try:
        _, given = load_config_file(value)
    except (OSError, ValueError) as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param) from e
    ctx.default_map = {name: dict(given) for name in SUBCOMMANDS}


@click.group(cls=ExitCodeGroup)
@click.version_option(__version__, prog_name="texdiff")
@click.option(
    "-c",
    "--config",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    is_eager=True,
    expose_value=False,
    callback=use_config_file,
    help=(
        "key = value file providing defaults for the options of every "
        "command, options given on the command line take precedence"
    ),
)
def texdiff() -> None:
    """Multiscale diffusion preprocessing for local pattern texture
    descriptors"""


def dataset_arguments(function: Callable) -> Callable:
    decorators = [
        click.argument(
            "dataset_root",
            required=False,
            type=click.Path(file_okay=False, path_type=Path),
        ),
        click.option(
            "--folds",
            type=click.IntRange(min=2),
            default=DEFAULTS.folds,
            show_default=True,
            help="Number of stratified cross validation folds",
        ),
        click.option(
            "--seed",
            type=int,
            default=DEFAULTS.seed,
            show_default=True,
            help="Seed of the fold assignment",
        ),
        click.option(
            "-j",
            "--jobs",
            type=click.IntRange(min=1),
            default=DEFAULTS.jobs,
            show_default=True,
            help="Number of worker processes",
        ),
    ]
    for decorator in reversed(decorators):
        function = decorator(function)
    return function


def experiment_options(function: Callable) -> Callable:
    decorators = [
        click.option(
            "--methods",
            type=CommaSeparatedChoice(Method),
            default=",".join(DEFAULTS.methods),
            show_default=True,
            help="Diffusion methods, comma separated",
        ),
        click.option(
            "--descriptors",
            type=CommaSeparatedChoice(Descriptor),
            default=",".join(DEFAULTS.descriptors),
            show_default=True,
            help="Texture descriptors, comma separated",
        ),
        click.option(
            "--scales",
            "n_scales",
            type=click.IntRange(min=1),
            default=DEFAULTS.n_scales,
            show_default=True,
            help="Number of diffusion iterations",
        ),
        click.option(
            "--cache-dir",
            "cache_dir",
            type=click.Path(file_okay=False, path_type=Path),
            default=DEFAULTS.cache_dir,
            show_default=True,
            help="Where computed features are kept between runs",
        ),
        diffusion_options,
        descriptor_options,
    ]
    for decorator in reversed(decorators):
        function = decorator(function)
    return function


def require_dataset_root(dataset_root: Optional[Path]) -> Path:
    if dataset_root is None:
        raise click.UsageError(
            "Missing the dataset root, give it as an argument or in the config file"
        )
    return dataset_root


def read_dataset(dataset_root: Path, folds: int, seed: int, jobs: int) -> Dataset:
    dataset = load_dataset(dataset_root, folds=folds, seed=seed, jobs=jobs)
    click.echo(
        f"Loaded {len(dataset)} images in {dataset.class_count} classes "
        f"from {dataset_root}",
        err=True,
    )
    return dataset


def write_files(files: Dict[Path, bytes]) -> None:
    for path, contents in files.items():
        write_atomically(path, contents)


def build_store(
    dataset: Dataset,
    cache_dir: Path,
    jobs: int,
    diffusion_options: Optional[Dict[str, Any]],
    descriptor_options: Optional[Dict[str, Any]],
) -> FeatureStore:
    return FeatureStore(
        dataset=dataset,
        cache=FeatureCache(cache_dir),
        params=DiffusionParams(**(diffusion_options or {})),
        options=DescriptorOptions(**(descriptor_options or {})),
        jobs=jobs,
    )


@texdiff.command()
@click.argument("image", type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    "-m",
    "--method",
    type=click.Choice([m.value for m in Method]),
    required=True,
    help="Diffusion method",
)
@click.option(
    "--scales",
    "n_scales",
    type=click.IntRange(min=1),
    default=DEFAULTS.n_scales,
    show_default=True,
    help="Number of diffusion iterations",
)
@click.option(
    "-o",
    "--out",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path("."),
    help="Output folder",
)
@click.option(
    "--template",
    default=DEFAULT_FRAME_TEMPLATE,
    show_default=True,
    help="File name template of the frames, may use {stem}, {method} and {it}",
)
@diffusion_options
def diffuse(
    image: Path,
    method: str,
    n_scales: int,
    out: Path,
    template: str,
    diffusion_options: Optional[Dict[str, Any]] = None,
) -> None:
    """Write the multiscale stack of IMAGE as PGM frames plus a manifest"""
    params = DiffusionParams(**(diffusion_options or {}))
    stack = diffuse_image(load_image(image), Method(method), n_scales, params)
    files = dump_stack(stack, out, image.stem, template)
    write_files(files)
    click.echo(f"Wrote {len(files)} files to {out}")


@texdiff.command()
@dataset_arguments
@experiment_options
@click.option(
    "-o",
    "--out",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path("features"),
    show_default=True,
    help="Folder receiving one features_<method>_<descriptor>.csv per cell",
)
def extract(
    dataset_root: Optional[Path],
    folds: int,
    seed: int,
    jobs: int,
    methods: List[Method],
    descriptors: List[Descriptor],
    n_scales: int,
    cache_dir: Path,
    out: Path,
    diffusion_options: Optional[Dict[str, Any]] = None,
    descriptor_options: Optional[Dict[str, Any]] = None,
) -> None:
    """Compute the features of every scale of every image of DATASET_ROOT.
    Features already in the cache are not recomputed"""
    dataset = read_dataset(require_dataset_root(dataset_root), folds, seed, jobs)
    store = build_store(dataset, cache_dir, jobs, diffusion_options, descriptor_options)
    computed = store.ensure(methods, descriptors, n_scales)
    click.echo(f"Computed {computed} feature tables, the others came from the cache")

    files = {
        out / f"features_{m.value}_{d.value}.csv": features_csv(
            store.iter_tables(m, d, n_scales)
        )
        for m in methods
        for d in descriptors
    }
    write_files(files)
    click.echo(f"Wrote {len(files)} feature files to {out}")


@texdiff.command()
@dataset_arguments
@experiment_options
@click.option(
    "--classifiers",
    type=CommaSeparatedChoice(Classifier),
    default=",".join(DEFAULTS.classifiers),
    show_default=True,
    help="Classifiers, comma separated",
)
@click.option(
    "-o",
    "--out",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path("results"),
    show_default=True,
    help="Folder receiving summary.csv, curves.csv and config.json",
)
def sweep(
    dataset_root: Optional[Path],
    folds: int,
    seed: int,
    jobs: int,
    methods: List[Method],
    descriptors: List[Descriptor],
    classifiers: List[Classifier],
    n_scales: int,
    cache_dir: Path,
    out: Path,
    diffusion_options: Optional[Dict[str, Any]] = None,
    descriptor_options: Optional[Dict[str, Any]] = None,
) -> None:
    """Cross validate the original features joined with the features of each
    scale, for every method, descriptor and classifier"""
    root = require_dataset_root(dataset_root)
    dataset = read_dataset(root, folds, seed, jobs)
    store = build_store(dataset, cache_dir, jobs, diffusion_options, descriptor_options)
    store.ensure(methods, descriptors, n_scales)

    results: List[SweepResult] = []
    for method in methods:
        for descriptor in descriptors:
            by_classifier = sweep_tables(
                store.iter_tables(method, descriptor, n_scales), method, classifiers
            )
            for classifier in classifiers:
                result = by_classifier[classifier]
                results.append(result)
                click.echo(
                    f"{method.value:>8} + {descriptor.value:<6} {classifier.value:<4} "
                    f"baseline {result.baseline}  best {result.best} "
                    f"at it {result.best_it}"
                )

    config = run_config(
        root,
        folds,
        seed,
        jobs,
        methods,
        descriptors,
        classifiers,
        n_scales,
        cache_dir,
        store,
    )
    write_files(
        {
            out / "summary.csv": to_csv_bytes(summary_frame(results)),
            out / "curves.csv": to_csv_bytes(results_frame(results)),
            out / "config.json": json.dumps(
                config.dump(), indent=2, sort_keys=True
            ).encode("utf-8"),
        }
    )
    click.echo(f"Wrote summary.csv, curves.csv and config.json to {out}")


def run_config(
    root: Path,
    folds: int,
    seed: int,
    jobs: int,
    methods: List[Method],
    descriptors: List[Descriptor],
    classifiers: List[Classifier],
    n_scales: int,
    cache_dir: Path,
    store: FeatureStore,
) -> ExperimentConfig:
    """The configuration a sweep actually ran with"""
    params = store.params
    options = store.options
    return ExperimentConfig(
        dataset_root=root.as_posix(),
        methods=[MethodName(m.value) for m in methods],
        descriptors=[DescriptorName(d.value) for d in descriptors],
        classifiers=[ClassifierName(c.value) for c in classifiers],
        n_scales=PositiveInt(n_scales),
        folds=FoldCount(folds),
        seed=seed,
        kappa=params.kappa,
        delta=params.delta,
        p=params.p,
        epsilon=params.epsilon,
        dt=params.dt,
        sigma_step=params.sigma_step,
        grad_floor=params.grad_floor,
        edge_stopping=EdgeStoppingName(params.edge_stopping.value),
        ltp_k=NonNegativeInt(options.ltp_k),
        cslbp_t=NonNegativeFloat(options.cslbp_t),
        cslbp_median=options.cslbp_median,
        cache_dir=cache_dir.as_posix(),
        jobs=PositiveInt(jobs),
    )


@texdiff.command()
@click.argument(
    "results",
    nargs=-1,
    required=True,
    type=click.Path(dir_okay=False, path_type=Path),
)
def report(results: Tuple[Path, ...]) -> None:
    """Compare the best accuracy of each cell with its baseline. Takes one
    curves.csv per dataset, datasets are named after the folder holding the
    file"""
    names = [path.parent.name or path.stem for path in results]
    if len(set(names)) != len(names):
        names = [str(path) for path in results]
    frames = {name: read_results(path) for name, path in zip(names, results)}
    click.echo(format_gain_report(gain_report(frames)))


@texdiff.command()
@dataset_arguments
def info(dataset_root: Optional[Path], folds: int, seed: int, jobs: int) -> None:
    """Print statistics about DATASET_ROOT and its fold assignment"""
    dataset = read_dataset(require_dataset_root(dataset_root), folds, seed, jobs)
    description = dataset.describe()
    for key, value in description.items():
        click.echo(f"{key} : {value}")
    click.echo(f"digest : {dataset.content_digest()}")


if __name__ == "__main__":
    texdiff()
