# Reversing Module Package
