"""Path-based summaries of RDF knowledge graphs."""

__version__ = "0.1.0"
