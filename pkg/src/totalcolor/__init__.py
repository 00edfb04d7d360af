"""Total coloring of 1-embedded graphs: discharging engine, structural
checks, constructive extension procedures, and an exact desk-scale solver."""

__version__ = "0.1.0"
