// filled in with the expression module
