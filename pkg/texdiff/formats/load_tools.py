import warnings
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Dict, Iterable, List, Protocol, TypeVar

from texdiff.errors import DecodeError, FormatError, IngestionError
from texdiff.image import DEFAULT_SEED, Dataset, Image, LabeledImage

from .guess import guess_format
from .loaders_and_dumpers import LOADERS

T_co = TypeVar("T_co", covariant=True)


class FileLoader(Protocol[T_co]):
    """Function that expects a path to a file as a parameter and returns its
    contents in whatever form suitable for the current format"""

    def __call__(self, path: Path) -> T_co:
        ...


def load_image(path: Path, **kwargs: Any) -> Image:
    """Decode any supported raster file to a grayscale image in [0, 1]"""
    format_ = guess_format(path)
    loader = LOADERS[format_]
    return loader(path, **kwargs)


def iter_class_folders(root: Path) -> Iterable[Path]:
    """Class folders in lexicographic order, hidden folders are ignored"""
    if not root.is_dir():
        raise IngestionError(f"Dataset root is not a folder : {root}")

    return sorted(
        p for p in root.iterdir() if p.is_dir() and not p.name.startswith(".")
    )


def list_images(folder: Path) -> List[Path]:
    """Image files of a class folder in lexicographic order. Files that are
    not images are skipped with a warning, hidden files silently"""
    images: List[Path] = []
    for path in sorted(folder.iterdir()):
        if path.name.startswith(".") or not path.is_file():
            continue
        try:
            guess_format(path)
        except (FormatError, DecodeError) as e:
            warnings.warn(f"Skipping {folder.name}/{path.name} : {e}")
            continue
        images.append(path)
    return images


def load_files(
    paths: List[Path], file_loader: FileLoader[T_co], jobs: int = 1
) -> List[T_co]:
    """Decode files in parallel, the results keep the order of paths"""
    if jobs <= 1:
        return [file_loader(p) for p in paths]

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(file_loader, paths))


def load_dataset(
    root: Path, folds: int, seed: int = DEFAULT_SEED, jobs: int = 1
) -> Dataset:
    """Load a <root>/<class_name>/<image files> folder. Class ids follow the
    lexicographic order of class names"""
    class_folders = list(iter_class_folders(root))
    if not class_folders:
        raise IngestionError(f"No class folder found in {root}")

    paths_by_class: Dict[int, List[Path]] = {}
    for class_id, folder in enumerate(class_folders):
        images = list_images(folder)
        if not images:
            raise IngestionError(f"Class folder {folder.name!r} contains no images")
        paths_by_class[class_id] = images

    labeled_paths = sorted(
        ((p, class_id) for class_id, ps in paths_by_class.items() for p in ps),
        key=lambda e: e[0].relative_to(root).as_posix(),
    )
    images = load_files([p for p, _ in labeled_paths], load_image, jobs=jobs)
    items = [
        LabeledImage(
            image=image,
            class_id=class_id,
            source_path=path.relative_to(root).as_posix(),
        )
        for image, (path, class_id) in zip(images, labeled_paths)
    ]
    return Dataset.from_items(
        items,
        class_names=[f.name for f in class_folders],
        folds=folds,
        seed=seed,
    )
