from .settings import HarnessSettings, load_settings
