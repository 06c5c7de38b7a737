"""JSON document for verification suite results."""

from pydantic import BaseModel, Field, computed_field


class SuiteReportModel(BaseModel):
    """Outcome of one verification suite run."""

    suite: str = Field(examples=["sandwich-oracle"])
    seed: int = Field(description="RNG seed used for sampling")
    limit: int = Field(ge=1, description="Sweep size the suite ran with")
    checked: int = Field(default=0, ge=0, description="Cases checked")
    failures: int = Field(default=0, ge=0, description="Cases that violated the property")
    skipped: int = Field(default=0, ge=0, description="Cases the budget could not decide")
    details: list[str] = Field(default_factory=list, description="First failure messages")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.failures == 0
