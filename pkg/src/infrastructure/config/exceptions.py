class ConfigurationException(Exception):
    """Unusable configuration: unknown key, malformed value or unreadable file"""

    def __init__(self, key: str, message: str = None):
        self.key = key
        self.message = message or f"Invalid configuration value for {key!r}"
        super().__init__(self.message)
