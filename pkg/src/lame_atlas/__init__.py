"""Verification suite for Mumford curves of genus 5-8 with 12(g-1) automorphisms."""

__version__ = "0.1.0"
