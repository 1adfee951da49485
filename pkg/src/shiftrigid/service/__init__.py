"""HTTP front end over the shared operation layer."""

from shiftrigid.service.app import app

__all__ = ["app"]
