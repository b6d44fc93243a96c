"""Top-level package for painleve-bilinear sources."""
