"""Unit tests for sigband library modules"""
