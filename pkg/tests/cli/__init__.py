"""CLI test package."""


