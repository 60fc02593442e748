"""Core engine - mesh model, topology, cut graphs, and file formats."""
