# Monoid Module Package
