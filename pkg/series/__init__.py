"""Exact formal Laurent series and the bracket coefficient-of operator."""
