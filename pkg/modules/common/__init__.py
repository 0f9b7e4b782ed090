# Common Helpers Package
