"""FastAPI service exposing the exact-arithmetic engine.

The service is the natural long-running home for this code: consistent
scattering diagrams are expensive to complete but cached per (b, c,
variant, order), so repeated theta/compare queries amortize the cost.
The CLI is a thin client over these endpoints.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException
from fastapi.responses import Response

from .. import __version__
from ..brokenlines import enumerate_broken_lines, generic_endpoint_for, lines_to_json
from ..cluster import ClusterParams, cluster_variable
from ..errors import Rank2BasesError
from ..greedy import greedy_element, support_region
from ..laurent import LaurentPoly
from ..scattering import completed_diagram, diagram_to_dict
from ..verify import Viewport, compare, compare_grid, render_svg
from . import schemas


def _poly_payload(p: LaurentPoly) -> schemas.PolyPayload:
    return schemas.PolyPayload(text=str(p), terms=p.to_triples())


def create_app() -> FastAPI:
    app = FastAPI(title="rank2bases", version=__version__)

    @app.exception_handler(Rank2BasesError)
    async def _domain_error(request, exc):  # pragma: no cover - exercised via TestClient
        raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/cluster", response_model=schemas.ClusterResponse)
    def cluster(req: schemas.ClusterRequest) -> schemas.ClusterResponse:
        params = ClusterParams(req.b, req.c)
        try:
            poly = cluster_variable(params, req.k)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return schemas.ClusterResponse(k=req.k, poly=_poly_payload(poly))

    @app.post("/greedy", response_model=schemas.GreedyResponse)
    def greedy(req: schemas.GreedyRequest) -> schemas.GreedyResponse:
        params = ClusterParams(req.b, req.c)
        elem = greedy_element(params, (req.a1, req.a2))
        region = support_region(params, (req.a1, req.a2))
        coeffs = None
        if req.table:
            coeffs = {f"{p1},{p2}": str(v) for (p1, p2), v in sorted(elem.coeffs.items())}
        return schemas.GreedyResponse(
            a1=req.a1,
            a2=req.a2,
            poly=_poly_payload(elem.poly),
            region_case=region.case_tag,
            region_imaginary=region.imaginary,
            coeffs=coeffs,
        )

    @app.post("/scatter", response_model=schemas.DiagramPayload)
    def scatter(req: schemas.ScatterRequest) -> schemas.DiagramPayload:
        params = ClusterParams(req.b, req.c)
        diagram = completed_diagram(params, req.order, "d" if req.dvec else "g")
        return schemas.DiagramPayload(**diagram_to_dict(diagram))

    @app.post("/theta", response_model=schemas.ThetaResponse)
    def theta_endpoint(req: schemas.ThetaRequest) -> schemas.ThetaResponse:
        params = ClusterParams(req.b, req.c)
        m = (req.m[0], req.m[1])
        if m == (0, 0):
            raise HTTPException(status_code=422, detail="the exponent m must be nonzero")
        variant = "d" if req.dvec else "g"
        if req.order is None:
            if not req.dvec:
                raise HTTPException(
                    status_code=422,
                    detail="an explicit order is required for the g-variant diagram",
                )
            # Pointed support bounds every bend on the d-variant side.
            from ..greedy import order_budget

            order = order_budget(params, (-m[0], -m[1]))
        else:
            order = req.order
        diagram = completed_diagram(params, max(order, 1), variant)
        if req.q is not None:
            q = (Fraction(req.q[0]), Fraction(req.q[1]))
        else:
            q = generic_endpoint_for(diagram, m, order)
        lines = enumerate_broken_lines(diagram, m, q, order)
        total = LaurentPoly.zero()
        for line in lines:
            total = total + line.final_monomial()
        return schemas.ThetaResponse(
            poly=_poly_payload(total),
            order_used=order,
            endpoint=[str(q[0]), str(q[1])],
            line_count=len(lines),
            lines=lines_to_json(lines) if req.lines else None,
        )

    @app.post("/compare", response_model=schemas.CompareReportPayload)
    def compare_endpoint(req: schemas.CompareRequest) -> schemas.CompareReportPayload:
        params = ClusterParams(req.b, req.c)
        report = compare(params, (req.a1, req.a2))
        return schemas.CompareReportPayload(**report.to_dict())

    @app.post("/compare-grid", response_model=schemas.CompareGridResponse)
    def compare_grid_endpoint(req: schemas.CompareGridRequest) -> schemas.CompareGridResponse:
        params = ClusterParams(req.b, req.c)
        reports = compare_grid(params, req.radius, max_budget=req.max_budget)
        payloads = [schemas.CompareReportPayload(**r.to_dict()) for r in reports]
        return schemas.CompareGridResponse(
            all_equal=all(r.equal for r in reports),
            count=len(reports),
            reports=payloads,
        )

    @app.post("/render")
    def render(req: schemas.RenderRequest) -> Response:
        params = ClusterParams(req.b, req.c)
        variant = "d" if req.dvec else "g"
        diagram = completed_diagram(params, req.order, variant)
        lines = None
        if req.theta_m is not None:
            m = (req.theta_m[0], req.theta_m[1])
            if m == (0, 0):
                raise HTTPException(status_code=422, detail="the exponent m must be nonzero")
            q = generic_endpoint_for(diagram, m, req.order)
            lines = enumerate_broken_lines(diagram, m, q, req.order)
        svg = render_svg(diagram, lines=lines, viewport=Viewport(extent=req.extent, size=req.size))
        return Response(content=svg, media_type="image/svg+xml")

    return app


app = create_app()
