# Ladders, condition checkers and enumeration
