"""Agro-climatic weather analysis: data ingestion, season math, alerts,
plain-language reporting and the HTTP service tying them together."""

__version__ = "0.1.0"
