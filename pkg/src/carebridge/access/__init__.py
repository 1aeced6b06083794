from .rbac import (
    AccessController,
    AccessDecision,
    Grant,
    NotificationIntent,
    Principal,
    Role,
    Scope,
)

__all__ = [
    "AccessController",
    "AccessDecision",
    "Grant",
    "NotificationIntent",
    "Principal",
    "Role",
    "Scope",
]
