from . import packageConfig


def generate_zero_based_index(num, length=packageConfig.LABEL_INDEX_LENGTH):
    """
    Generates a zero-padded index based on the input number, with a fixed length.

    Args:
        num (int): The number to convert into a zero-padded string.
        length (int): The fixed length of the returned string.

    Returns:
        str: A zero-padded index with the specified length.
    """
    return str(num).zfill(length)


def make_label(kind: str, **params) -> str:
    """
    Builds a sortable catalog label such as 'family/a=05,d=01,r=04,s=02'.
    Parameters keep their keyword order; values are zero padded so that string order is numeric order.
    """
    body = ",".join(f"{key}={generate_zero_based_index(value)}" for key, value in params.items())
    return f"{kind}/{body}"


def parse_int_list(text: str) -> list:
    """
    Parses '1,2,3' into [1, 2, 3]. Raises ValueError on anything that is not an integer.
    """
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or any(p == "" for p in parts):
        raise ValueError(f"Expected a comma separated list of integers, got {text!r}")
    return [int(p) for p in parts]


def parse_int_matrix(text: str) -> list:
    """
    Parses 'row;row;...' with comma separated rows, e.g. '0,0;1,1' -> [[0, 0], [1, 1]].
    """
    return [parse_int_list(row) for row in text.split(";")]
