"""
Bench history model
"""

from sqlalchemy import Float, Integer, String, select
from sqlalchemy.orm import Mapped, Session, mapped_column

from mdst_engine.models.base import Base


class BenchRun(Base):
    """One ladder point of a recorded bench run"""

    __tablename__ = "bench_runs"

    label: Mapped[str] = mapped_column(String(64), nullable=False, index=True)
    n: Mapped[int] = mapped_column(Integer, nullable=False)
    m: Mapped[int] = mapped_column(Integer, nullable=False)
    eps: Mapped[float] = mapped_column(Float, nullable=False)
    wall_ms: Mapped[float] = mapped_column(Float, nullable=False)
    tree_degree: Mapped[int] = mapped_column(Integer, nullable=False)
    degred_calls: Mapped[int] = mapped_column(Integer, nullable=False)

    @classmethod
    def for_label(cls, db: Session, label: str) -> list["BenchRun"]:
        """Ladder points recorded under `label`, smallest n first"""
        rows = db.execute(select(cls).where(cls.label == label).order_by(cls.n, cls.id))
        return list(rows.scalars())

    def __repr__(self) -> str:
        return f"<BenchRun(id={self.id}, label='{self.label}', n={self.n}, wall_ms={self.wall_ms})>"
