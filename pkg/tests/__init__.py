"""
Tests package for painleve-bilinear
"""
