"""Expression grammar and wire format resource."""

from grammar_docs import WIRE_FORMATS, get_grammar, get_wire_format


def _format_section(name: str) -> str:
    fmt = get_wire_format(name)
    return f"""## {name}

{fmt['description']}

{chr(10).join([f"- **{field['name']}** ({field['type']}): {field['description']}" for field in fmt['fields']])}
"""


def get_grammar_resource_impl() -> str:
    """Implementation for the grammar reference resource."""
    grammar = get_grammar()
    return f"""# Expression Grammar

**Description:** {grammar['description']}

## Productions

{chr(10).join([f"- **{p['name']}** := `{p['rule']}` ({p['description']})" for p in grammar['productions']])}

## Examples

{chr(10).join([f"- `{e['text']}`: {e['meaning']}" for e in grammar['examples']])}

# JSON Formats

{chr(10).join([_format_section(name) for name in WIRE_FORMATS])}
"""
