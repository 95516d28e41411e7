"""Command line interface for tqmzv"""
