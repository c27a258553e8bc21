"""
Base database model and database setup for bench history
"""

import sqlite3
from collections.abc import Iterator
from contextlib import contextmanager
from datetime import datetime

from sqlalchemy import DateTime, create_engine, event, func
from sqlalchemy.orm import DeclarativeBase, Mapped, Session, mapped_column, sessionmaker

from mdst_engine.config.settings import settings


class Base(DeclarativeBase):
    """Base model for all database entities"""

    id: Mapped[int] = mapped_column(primary_key=True, autoincrement=True)
    # filled by the database; SQLAlchemy handles the SQLite text format
    created_at: Mapped[datetime] = mapped_column(
        DateTime(timezone=True), server_default=func.now()
    )


# Bench runs are written from worker threads, one session per write
engine = create_engine(
    settings.database.url,
    echo=settings.database.echo,
    connect_args={"check_same_thread": False}
    if settings.database.url.startswith("sqlite")
    else {},
)


@event.listens_for(engine, "connect")
def set_sqlite_pragma(dbapi_conn, connection_record):
    """WAL journal for SQLite files"""
    if isinstance(dbapi_conn, sqlite3.Connection):
        cursor = dbapi_conn.cursor()
        cursor.execute("PRAGMA journal_mode=WAL")
        cursor.execute("PRAGMA synchronous=NORMAL")
        cursor.close()


SessionLocal = sessionmaker(engine, expire_on_commit=False, autoflush=False)


@contextmanager
def get_db() -> Iterator[Session]:
    """
    Get database session as context manager.

    Usage:
        with get_db() as db:
            db.add(row)
    """
    session = SessionLocal()
    try:
        yield session
        # Auto-commit if there were no exceptions
        if session.in_transaction():
            session.commit()
    except Exception:
        if session.in_transaction():
            session.rollback()
        raise
    finally:
        session.close()


def init_db() -> None:
    """Initialize database tables"""
    Base.metadata.create_all(engine)
