"""Test suite for tmtb."""
