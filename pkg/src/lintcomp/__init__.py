"""Natural-language coding standards compiled to linter configurations via a rule DSL."""

__version__ = "0.1.0"
