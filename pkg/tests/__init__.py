# Tests configuration
