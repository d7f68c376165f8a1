"""Resource implementations for the bracket series MCP server."""

from resources.grammar import get_grammar_resource_impl
from resources.usage_guide import get_usage_guide_impl

__all__ = [
    "get_grammar_resource_impl",
    "get_usage_guide_impl",
]
