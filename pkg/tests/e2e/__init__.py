"""End-to-End CLI tests for sigband commands"""
