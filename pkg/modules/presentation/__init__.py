# Presentation Module Package
