import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

with open("requirements.txt", "r") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

setuptools.setup(
    name="griesskit",
    version="0.1.0",
    description="Exact Griess algebras, minimal-model fusion and positivity of Virasoro-generated VOAs",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    install_requires=[r for r in requirements if not r.startswith("pytest")],
    extras_require={"test": ["pytest>=6.0"]},
    entry_points={"console_scripts": ["griesskit = griesskit.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
)
