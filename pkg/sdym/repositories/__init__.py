from .fixture_repository import FixtureRepository

__all__ = ["FixtureRepository"]
