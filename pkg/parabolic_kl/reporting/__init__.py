"""Reporting modules for parabolic-kl."""

from parabolic_kl.reporting.reporter import Reporter
from parabolic_kl.reporting.renderer import Renderer

__all__ = ["Reporter", "Renderer"]
