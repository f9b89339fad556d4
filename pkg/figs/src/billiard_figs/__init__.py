"""billiard-figs: regenerate figures from billiard-thermo CSV artifacts.

Read-only post-processing: every recipe consumes the documented CSV
schemas and writes one PNG and one SVG.  Reference overlays (cosine law,
post-collision speed law, Gaussian) are computed here from their closed
forms on purpose, as an end-to-end cross-check of the simulation output
rather than a reuse of its code.
"""

__version__ = "0.1.0"

from billiard_figs.recipes import RECIPES, render

__all__ = ["RECIPES", "render", "__version__"]
