"""Test package for sigband CLI"""
