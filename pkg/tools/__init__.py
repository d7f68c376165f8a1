"""Tool implementations shared by the MCP server and the command line."""
