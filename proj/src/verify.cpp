// filled in by a later module
