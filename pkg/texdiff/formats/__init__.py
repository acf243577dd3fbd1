"""
Module containing all the load/dump code for the supported raster formats
"""
from .format_names import Format
from .load_tools import load_dataset, load_image
from .loaders_and_dumpers import DUMPERS, LOADERS
