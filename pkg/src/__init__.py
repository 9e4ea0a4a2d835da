"""
relcat: relevant and symmetric monoidal closed categories workbench
"""

__version__ = "0.1.0"
