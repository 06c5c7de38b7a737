"""CLI commands for the Ackermann Goodstein toolkit."""
