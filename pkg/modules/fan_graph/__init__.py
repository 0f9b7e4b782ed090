# Fan Graph Module Package
