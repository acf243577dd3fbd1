from .load import load_png
