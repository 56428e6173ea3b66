"""pytest rootdir marker: puts the repository root on sys.path."""
