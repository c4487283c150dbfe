import http

from fastapi import (
    APIRouter,
    Depends,
    HTTPException,
)
from pydantic import (
    BaseModel,
    Field,
)

from dependencies import get_sweep_service
from errors.entanglement import (
    EigenSolverError,
    NotHermitianError,
)
from errors.evolution import MissingMagneticFieldError
from errors.geometry import DegenerateGeometryError
from errors.state import InvalidStateError
from errors.sweep import CrossoverNotFoundError
from models.entanglement import EntanglementReport
from models.state import PairState4
from models.sweep import (
    CrossoverReport,
    SweepConfig,
    SweepRow,
)
from services.entanglement import entanglement_report
from services.evolution import sign_convention
from services.sweep import (
    SweepService,
    find_crossover,
)
from services.units import unit_registry


router = APIRouter()


class SignConventionSchema(BaseModel):
    bilinear_diagonal: tuple[float, float]
    spin_label_weight: str
    orientation: int
    rate_prefactor: str
    propagator_factors: dict[str, float]
    text: str


class NegativityRequest(BaseModel):
    """
    A 4x4 pair state, basis LL, LR, RL, RR.

    Attributes:
        matrix: Four rows of four [re, im] cells.
    """
    matrix: list[list[tuple[float, float]]] = Field(min_length=4, max_length=4)


@router.get("/units", response_model=dict[str, str])
async def get_units():
    return unit_registry()


@router.get("/signs", response_model=SignConventionSchema)
async def get_signs():
    convention = sign_convention()
    return SignConventionSchema(**convention.model_dump(), text=convention.explain())


@router.post("/sweep", response_model=list[SweepRow])
def sweep(config: SweepConfig, sweep_service: SweepService = Depends(get_sweep_service)):
    try:
        return sweep_service.run(config)
    except (DegenerateGeometryError, MissingMagneticFieldError) as e:
        raise HTTPException(status_code=http.HTTPStatus.BAD_REQUEST, detail=str(e))


@router.post("/crossover", response_model=CrossoverReport)
def crossover(config: SweepConfig):
    try:
        return find_crossover(config)
    except CrossoverNotFoundError as e:
        raise HTTPException(status_code=http.HTTPStatus.UNPROCESSABLE_ENTITY, detail=str(e))


@router.post("/negativity", response_model=EntanglementReport)
async def negativity(request: NegativityRequest):
    if any(len(row) != 4 for row in request.matrix):
        raise HTTPException(status_code=http.HTTPStatus.BAD_REQUEST, detail="Each row needs 4 [re, im] cells")
    try:
        state = PairState4(m=[[complex(re, im) for re, im in row] for row in request.matrix])
        return entanglement_report(state)
    except (InvalidStateError, NotHermitianError, EigenSolverError) as e:
        raise HTTPException(status_code=http.HTTPStatus.BAD_REQUEST, detail=str(e))
