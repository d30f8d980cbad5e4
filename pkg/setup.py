from setuptools import setup, find_packages 
 
setup( 
    name="toric_pseudoindex",
    version="0.1.0",
    packages=find_packages(exclude=["tests"]), 
    install_requires=['python-flint',
                      'polars',
                      'psutil'],
    entry_points={
        "console_scripts": ["toric-pseudoindex=toric_pseudoindex.cli:main"],
    },
    python_requires=">=3.9",
    author="Daan Asma",
    author_email="nope",
    description="Fano invariants, blow-ups and pseudo-index checks for smooth complete toric varieties.", 
    long_description=open("README.md").read(), 
    long_description_content_type="text/markdown", 
    classifiers=[ 
        "Programming Language :: Python :: 3", 
        "License :: OSI Approved :: MIT License", 
        "Operating System :: OS Independent", 
    ], 
) 
