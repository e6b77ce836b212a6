from .browser import (
    Bar,
    BrowserModel,
    BrowserModelError,
    HighlightResult,
    OutlineEntry,
    PatternColumn,
    apply_pattern,
    build_browser_model,
    highlight,
)
from .geometry import (
    BrokenLinesGeometry,
    Circle,
    DepthGroup,
    GeometryError,
    Point,
    broken_lines_layout,
)

__all__ = [
    "Bar",
    "BrowserModel",
    "BrowserModelError",
    "HighlightResult",
    "OutlineEntry",
    "PatternColumn",
    "apply_pattern",
    "build_browser_model",
    "highlight",
    "BrokenLinesGeometry",
    "Circle",
    "DepthGroup",
    "GeometryError",
    "Point",
    "broken_lines_layout",
]
