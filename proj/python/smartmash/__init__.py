"""Semantic REST service registry and mashup engine."""

import json

from . import _smartmash

__all__ = ["EngineError", "FixtureServer", "Gateway", "services_turtle",
           "get_operator_turtle", "validate"]

FixtureServer = _smartmash.FixtureServer
services_turtle = _smartmash.services_turtle
get_operator_turtle = _smartmash.get_operator_turtle


class EngineError(Exception):
    """Engine failure carrying the JSON error body (code, message, context)."""

    def __init__(self, body):
        self.body = body
        self.code = body.get("code")
        super().__init__(body.get("message", ""))


def _decode_error(exc):
    try:
        return EngineError(json.loads(str(exc)))
    except ValueError:
        return EngineError({"code": "Unknown", "message": str(exc), "context": {}})


def validate(turtle):
    """One report per service declared in `turtle`."""
    try:
        return json.loads(_smartmash.validate(turtle))
    except _smartmash.EngineError as exc:
        raise _decode_error(exc) from None


class Gateway:
    """In-process gateway. Each call returns (http_status, payload)."""

    def __init__(self, turtle=None, fixture_base_url=None, timeout_ms=10000):
        try:
            self._g = _smartmash.Gateway(turtle, fixture_base_url, timeout_ms)
        except _smartmash.EngineError as exc:
            raise _decode_error(exc) from None

    @staticmethod
    def _out(result):
        status, body = result
        return status, json.loads(body)

    def analyze(self, query):
        return self._out(self._g.analyze(query))

    def execute(self, query, bindings=None):
        return self._out(self._g.execute(query, dict(bindings or {})))

    def register(self, turtle):
        return self._out(self._g.register(turtle))

    def services(self):
        return self._out(self._g.services())

    def health(self):
        return self._out(self._g.health())
