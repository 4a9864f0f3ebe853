from config.settings import SearchDefaults, Settings

settings = Settings()
defaults = SearchDefaults()

__all__ = ["settings", "defaults", "Settings", "SearchDefaults"]
