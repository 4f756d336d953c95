from __future__ import annotations

import pathlib

import numpy as np
import pytest

import gramls

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def kidney():
    """The shipped 157-sample age/kidney-function fixture, plus derived columns."""
    path = DATA_DIR / "kidney.csv"
    names, data = gramls.read_matrix_csv(path)
    assert names == ["age", "tot"]
    age = data[:, 0]
    tot = data[:, 1]
    n = age.shape[0]
    X3 = np.asfortranarray(np.column_stack([np.ones(n), age, age**2]))
    X4 = np.asfortranarray(np.column_stack([np.ones(n), age, age**2, tot]))
    return {
        "path": path,
        "age": age,
        "tot": tot,
        "X3": X3,
        "X4": X4,
        "predictors": np.asfortranarray(np.column_stack([age, age**2])),
    }
