"""Edge-reconstruction numbers of trees."""

__version__ = "0.1.0"
