# Tetrachrome: 4-coloring (P6,C5)-free graphs
__version__ = "0.1.0"
