# CLI Module Package
