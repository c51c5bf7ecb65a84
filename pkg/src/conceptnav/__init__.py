"""Grid-world embodied instruction following with learned concept grounding."""

__version__ = "0.1.0"
