# Geometry Module Package
