# -*- coding: utf-8 -*-
"""Script for constructing and verifying K-snakes over the alternating group."""
import sys

from ksnake.cli import main

if __name__ == "__main__":
    print("Welcome to the K-snake builder!")
    print("--------------------------------------------------")
    status = main()
    print("Goodbye!")
    sys.exit(status)
