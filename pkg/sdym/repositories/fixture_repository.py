from django.core.cache import cache
from typing import Optional
import logging

from ..series import SolutionFixture
from ..serializers import FixtureSerializer
from ..utils import engine_setting

logger = logging.getLogger(__name__)


class FixtureRepository:
    """Serialized solution fixtures in the Django cache."""

    def __init__(self):
        self.cache = cache
        self.prefix = "sdym:fixture:"

    def key(self, kind: str, seed: Optional[int], degree: int, n: int) -> str:
        return f"{self.prefix}{kind}:{seed if seed is not None else '-'}:{degree}:{n}"

    def get(self, kind: str, seed: Optional[int], degree: int, n: int) -> Optional[SolutionFixture]:
        key = self.key(kind, seed, degree, n)
        try:
            data = self.cache.get(key)
        except Exception as e:
            logger.warning(f"Fixture cache read failed for {key}: {str(e)}")
            return None
        if data is None:
            return None

        serializer = FixtureSerializer(data=data)
        if not serializer.is_valid():
            logger.warning(f"Discarding malformed cached fixture {key}: {serializer.errors}")
            self.delete(kind, seed, degree, n)
            return None
        return serializer.save()

    def save(self, kind: str, fixture: SolutionFixture) -> None:
        key = self.key(kind, fixture.seed, fixture.degree, fixture.n)
        try:
            self.cache.set(key, FixtureSerializer(fixture).data, timeout=engine_setting("FIXTURE_CACHE_TIMEOUT"))
            logger.debug(f"Cached fixture {key}")
        except Exception as e:
            logger.warning(f"Fixture cache write failed for {key}: {str(e)}")

    def delete(self, kind: str, seed: Optional[int], degree: int, n: int) -> None:
        try:
            self.cache.delete(self.key(kind, seed, degree, n))
        except Exception as e:
            logger.warning(f"Fixture cache delete failed: {str(e)}")
