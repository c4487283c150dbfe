from fastapi import (
    Depends,
    Request,
    HTTPException,
)

from config import settings
from services.sweep import (
    GridSweepService,
    SweepService,
)


def get_sweep_workers(request: Request) -> int:
    if not getattr(request.app.state, "self_checks_passed", False):
        raise HTTPException(status_code=500, detail="Algebraic self-checks have not run")
    return settings.SWEEP_WORKERS


def get_sweep_service(
    workers: int = Depends(get_sweep_workers),
) -> SweepService:
    return GridSweepService(workers=workers)
